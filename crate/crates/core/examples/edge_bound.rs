//! Edge bounds for k-partite visibility graphs, and the per-part sighting
//! counts behind them.
//!
//!     cargo run --example edge_bound

use trvg::families::{
    bound_check, chromatic_partition, construct_multipartite, edge_bound, sighting_inequality_holds, visibility_counts,
};
use trvg::graph::complete_multipartite;
use trvg::{extract, Axis, PartList};

fn main() -> trvg::Result<()> {
    for (n, k) in [(7, 2), (8, 2), (9, 3), (12, 4)] {
        println!("n={n:>2} k={k}: at most {} edges", edge_bound(n, k));
    }

    for sizes in [vec![3, 4], vec![4, 4], vec![3, 5], vec![3, 3, 3]] {
        let parts = PartList::new(sizes.clone())?;
        let g = complete_multipartite(&parts);
        println!("K{sizes:?}: {:?}", bound_check(&g, &parts.membership())?);
    }

    let parts = PartList::new(vec![2, 3, 4])?;
    let layout = construct_multipartite(&parts)?;
    let coloring = chromatic_partition(&extract(&layout)?)?;
    let counts = visibility_counts(&layout, &coloring)?;
    for i in 0..counts.parts() {
        for j in 0..counts.parts() {
            if i == j {
                continue;
            }
            let h = counts.total(i, j, Axis::H);
            let v = counts.total(i, j, Axis::V);
            let ok =
                sighting_inequality_holds(&counts, i, j, Axis::H) && sighting_inequality_holds(&counts, i, j, Axis::V);
            println!("part {i} -> part {j}: {h} horizontal, {v} vertical sightings, inequality holds: {ok}");
        }
    }
    Ok(())
}
