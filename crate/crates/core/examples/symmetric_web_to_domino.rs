//! Reading the domino tableau off a symmetrical 3-web.
//!
//! `cargo run --example symmetric_web_to_domino`

use webfold::oracle::{enumerate, Filter};
use webfold::tableau::fold;
use webfold::web3::{domino_of_symmetric_web, symmetric_distances, web_of_tableau};
use webfold::Shape;

fn main() -> webfold::Result<()> {
    for t in enumerate(&Shape::rectangle(3, 4), Filter::Symmetric)? {
        let w = web_of_tableau(&t)?;
        let d = domino_of_symmetric_web(&w)?;
        println!("{}  h = {:?}  D = {}", t.word(), symmetric_distances(&w)?, d.word());
        assert_eq!(d, fold(&t)?);
    }
    Ok(())
}
