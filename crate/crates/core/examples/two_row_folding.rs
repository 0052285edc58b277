//! Two-row tableaux as noncrossing matchings, and folding them.
//!
//! `cargo run --example two_row_folding`

use webfold::tableau::{evacuate, fold, promote};
use webfold::web2::{fold2, is_symmetrical2, reflect2, rotate2, web2_of_tableau};
use webfold::Tableau;

fn main() -> webfold::Result<()> {
    let t = Tableau::from_rows(vec![vec![1, 3, 4, 7], vec![2, 5, 6, 8]])?;
    let m = web2_of_tableau(&t)?;
    println!("T = {}   2-web: {m}", t.word());
    println!("rotated: {}   = web of P(T): {}", rotate2(&m), web2_of_tableau(&promote(&t)?)?);
    println!("reflected: {}   = web of E(T): {}", reflect2(&m), web2_of_tableau(&evacuate(&t)?)?);
    println!("symmetrical: {}", is_symmetrical2(&m));
    let folded = fold2(&m)?;
    println!("folded web: {folded}");
    println!("web of F(T): {}", web2_of_tableau(&fold(&t)?)?);
    Ok(())
}
