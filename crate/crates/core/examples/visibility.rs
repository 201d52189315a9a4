//! Extract visibility graphs from layouts.
//!
//!     cargo run --example visibility

use trvg::families::{fixture_layout, Fixture};
use trvg::io::parse_layout;
use trvg::{extract, Mode};

fn main() -> trvg::Result<()> {
    let row = fixture_layout(Fixture::Fig1K5);
    let g = extract(&row)?;
    println!("five squares in a row: {} vertices, {} edges", g.n(), g.edge_count());

    let g = extract(&fixture_layout(Fixture::Fig6bItrvg))?;
    println!("intersecting layout of G: {} edges", g.edge_count());
    for (u, v) in g.edges().take(6) {
        println!("  {} - {}", g.label(u), g.label(v));
    }

    // Touching at a corner is not a sight line.
    let corner =
        parse_layout(r#"{"mode":"trvg","rects":[{"id":"a","x":[0,1],"y":[0,1]},{"id":"b","x":[1,2],"y":[1,2]}]}"#)?;
    println!("corner contact: {} edges", extract(&corner)?.edge_count());

    let overlap =
        parse_layout(r#"{"mode":"trvg","rects":[{"id":"a","x":[0,2],"y":[0,2]},{"id":"b","x":["1.5",3],"y":[1,3]}]}"#)?;
    match extract(&overlap) {
        Err(e) => println!("disjoint mode rejects overlap: {e}"),
        Ok(_) => unreachable!(),
    }
    let g = extract(&overlap.with_mode(Mode::Intersecting))?;
    println!("same rectangles, intersecting mode: {} edge", g.edge_count());
    Ok(())
}
