//! Promotion, evacuation and the step-by-step fold of a tableau.
//!
//! `cargo run --example promotion_and_folding [row-word]`

use webfold::tableau::{evacuate, fold, is_domino, is_rotationally_symmetric, partial_fold, promote, unfold};
use webfold::Tableau;

fn main() -> webfold::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "111122213132223333".into());
    let t = Tableau::from_word(&word)?;
    println!("T ({}):\n{t}\n", t.word());
    println!("P(T):\n{}\n", promote(&t)?);
    println!("E(T):\n{}\n", evacuate(&t)?);
    for j in 1..=t.size() / 2 {
        println!("f^{j}(T) = {}", partial_fold(&t, j)?.word());
    }
    let f = fold(&t)?;
    println!("\nF(T):\n{f}");
    println!("symmetric: {}, F(T) domino: {}", is_rotationally_symmetric(&t)?, is_domino(&f));
    assert_eq!(unfold(&f)?, t);
    Ok(())
}
