//! Building the symmetrical web of a domino tableau from its block
//! decomposition and crossed m-diagram.
//!
//! `cargo run --example crossed_web [domino-row-word]`

use webfold::tableau::unfold;
use webfold::web3::{crossed_web, decompose_blocks, tableau_of_web, CrossedDiagram};
use webfold::Tableau;

fn main() -> webfold::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "112212121133332323".into());
    let d = Tableau::from_word(&word)?;
    let dec = decompose_blocks(&d)?;
    println!("{dec}");
    let cd = CrossedDiagram::of_domino(&d)?;
    println!("crossed m-diagram: {}", cd.diagram);
    println!("crossed pairs: {:?}", cd.crossed_arcs);
    let w = crossed_web(&d)?;
    println!("symmetrical: {}, valid: {}", w.is_symmetrical(), w.is_3web());
    let t = tableau_of_web(&w)?;
    println!("T = {}  unfold(D) = {}", t.word(), unfold(&d)?.word());
    Ok(())
}
