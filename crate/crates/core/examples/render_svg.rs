//! Writes SVG drawings of an m-diagram, its web, a rotated web (drawn by
//! relaxation) and a 2-web into a directory.
//!
//! `cargo run --example render_svg [out-dir]`

use std::fs;
use std::path::PathBuf;

use webfold::mdiagram::MDiagram;
use webfold::svg::{render_mdiagram, render_web, render_web2};
use webfold::web2::web2_of_tableau;
use webfold::web3::{crossed_web, web_of_tableau};
use webfold::Tableau;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/svg".into()));
    fs::create_dir_all(&dir)?;
    let t = Tableau::from_word("111122213132223333")?;
    let w = web_of_tableau(&t)?;
    let files = [
        ("mdiagram.svg", render_mdiagram(&MDiagram::of_tableau(&t)?)),
        ("web.svg", render_web(&w)),
        ("web_rotated.svg", render_web(&w.rotate())),
        ("crossed_web.svg", render_web(&crossed_web(&Tableau::from_word("112212121133332323")?)?)),
        ("web2.svg", render_web2(&web2_of_tableau(&Tableau::from_word("11212122")?)?)),
    ];
    for (name, svg) in files {
        fs::write(dir.join(name), svg)?;
        println!("wrote {}", dir.join(name).display());
    }
    Ok(())
}
