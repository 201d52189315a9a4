//! Cross-check the search against brute-force geometry on small graphs.
//!
//!     cargo run --release --example oracle

use trvg::graph::all_graphs;
use trvg::interval::is_interval;
use trvg::oracle::{geometric_witness, is_interval_oracle};
use trvg::{decide_trvg, Budget, Mode, Screens};

fn main() -> trvg::Result<()> {
    for g in all_graphs(4) {
        let search = decide_trvg(&g, Budget::default(), Screens::NONE)?.verdict.is_yes();
        let brute = geometric_witness(&g, Mode::Disjoint, 4)?;
        println!("{:?}: search {search}, brute force {}", g.edges().collect::<Vec<_>>(), brute.is_some());
    }
    for n in 0..=6 {
        let graphs = all_graphs(n);
        let mut agree = 0;
        for g in &graphs {
            agree += usize::from(is_interval(g)? == is_interval_oracle(g)?);
        }
        println!("n={n}: recognizer agrees with clique oracle on {agree}/{}", graphs.len());
    }
    Ok(())
}
