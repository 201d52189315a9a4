//! Interval graph recognition, clique orders and interval models.
//!
//!     cargo run --example interval

use trvg::interval::{clique_order, maximal_cliques, recognize_interval};
use trvg::Graph;

fn show(name: &str, g: &Graph) -> trvg::Result<()> {
    println!("{name}: maximal cliques {:?}", maximal_cliques(g)?);
    match clique_order(g)? {
        Some(order) => {
            println!("  consecutive order {:?}", order.cliques());
            let model = recognize_interval(g)?.expect("ordered cliques give a model");
            for (v, (lo, hi)) in model.intervals().iter().enumerate() {
                println!("  {v}: ({lo}, {hi})");
            }
        }
        None => println!("  not an interval graph"),
    }
    Ok(())
}

fn main() -> trvg::Result<()> {
    show("path on 5 vertices", &Graph::path(5))?;
    show("4-cycle", &Graph::cycle(4))?;
    // Three paths of length two from a center: an asteroidal triple.
    let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])?;
    show("subdivided claw", &spider)?;
    Ok(())
}
