//! Face distances on a crossed diagram: web distance against arc distance
//! and coherent separators.
//!
//! `cargo run --example distance_lemmas [domino-row-word]`

use webfold::web3::CrossedDiagram;
use webfold::Tableau;

fn main() -> webfold::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "112212121133332323".into());
    let cd = CrossedDiagram::of_domino(&Tableau::from_word(&word)?)?;
    let web = cd.web();
    println!("face  arcs-above  mirror  webdist  arcdist  ε");
    for x in web.disk_faces() {
        let xm = cd.mirror_face(x)?;
        println!(
            "{x:>4}  {:<10}  {xm:>6}  {:>7}  {:>7}  {}",
            format!("{:?}", cd.arcs_above(x)?),
            web.web_distance(x, xm)?,
            cd.arc_distance(x, xm)?,
            cd.epsilon(x)?
        );
    }
    let faces = web.disk_faces();
    let mut slack = 0;
    for &x in &faces {
        for &y in &faces {
            let lower = cd.arc_distance(x, y)? as i64 - cd.coherent_separators(x, y)?.len() as i64;
            slack = slack.max(lower - web.web_distance(x, y)? as i64);
        }
    }
    println!("max(arcdist − |CS| − webdist) over face pairs: {slack}");
    for (a, b) in cd.diagram.intersecting_pairs() {
        println!("arcs {a}, {b}: {:?}", cd.crossing_case(a, b));
    }
    Ok(())
}
