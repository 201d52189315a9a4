//! A graph that needs overlapping rectangles.
//!
//!     cargo run --release --example intersecting

use trvg::families::{fixture_graph, fixture_layout, Fixture};
use trvg::{decide_itrvg, decide_trvg, extract, verify, Budget, Mapping, Screens};

fn main() -> trvg::Result<()> {
    let g = fixture_graph(Fixture::Fig6aG);
    let layout = fixture_layout(Fixture::Fig6bItrvg);
    let rep = verify(&layout, &g, &Mapping::Identity)?;
    println!("stored intersecting layout realizes G: {}", rep.ok);
    println!("overlapping pairs: {}", layout.overlapping_pairs().len());

    let d = decide_trvg(&g, Budget::default(), Screens::NONE)?;
    println!("disjoint rectangles: {:?} after {} nodes", d.verdict, d.nodes);
    let d = decide_itrvg(&g, Budget::default())?;
    println!("overlapping rectangles: yes = {} after {} nodes", d.verdict.is_yes(), d.nodes);

    let gp = fixture_graph(Fixture::GraphGprime);
    let rep = verify(&fixture_layout(Fixture::Fig7aGprime), &gp, &Mapping::Search)?;
    println!("G' (A, B, C vertices only) has a disjoint layout: {}", rep.ok);
    println!("G' edges: {}", extract(&fixture_layout(Fixture::Fig7aGprime))?.edge_count());
    Ok(())
}
