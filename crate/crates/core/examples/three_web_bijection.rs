//! Tableau → m-diagram → 3-web → tableau, with the boundary distances that
//! drive the inverse map.
//!
//! `cargo run --example three_web_bijection [row-word]`

use webfold::mdiagram::MDiagram;
use webfold::web3::{boundary_distances, tableau_of_web, web_of_tableau};
use webfold::Tableau;

fn main() -> webfold::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "112323".into());
    let t = Tableau::from_word(&word)?;
    let d = MDiagram::of_tableau(&t)?;
    println!("m-diagram: {d}");
    let w = web_of_tableau(&t)?;
    println!(
        "web: {} boundary, {} internal vertices, {} faces, valid: {}",
        w.n_boundary(),
        w.num_internal(),
        w.num_faces(),
        w.is_3web()
    );
    println!("webdist(B_0, B_i): {:?}", boundary_distances(&w)?);
    println!("canonical digest: {}", w.canonical().digest);
    let back = tableau_of_web(&w)?;
    println!("recovered: {}", back.word());
    assert_eq!(back, t);
    Ok(())
}
