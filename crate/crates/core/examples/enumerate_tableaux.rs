//! Lists standard tableaux of a rectangle and checks the count against the
//! hook length formula.
//!
//! `cargo run --example enumerate_tableaux [rows] [cols]`

use webfold::oracle::{enumerate, hook_length_count, Filter};
use webfold::Shape;

fn main() -> webfold::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().unwrap_or(3));
    let (rows, cols) = (args.next().unwrap_or(3), args.next().unwrap_or(3));
    let shape = Shape::rectangle(rows, cols);
    let all: Vec<String> = enumerate(&shape, Filter::All)?.map(|t| t.word()).collect();
    for w in all.iter().take(10) {
        println!("{w}");
    }
    if all.len() > 10 {
        println!("…");
    }
    let symmetric = enumerate(&shape, Filter::Symmetric)?.count();
    println!("{} tableaux (hook length: {:?}), {symmetric} symmetric", all.len(), hook_length_count(&vec![cols; rows]));
    Ok(())
}
