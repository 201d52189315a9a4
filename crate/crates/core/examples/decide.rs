//! Decide K_{p,q} by exhaustive search and compare with the closed form.
//!
//!     cargo run --release --example decide

use std::time::Instant;

use trvg::families::classify_bipartite;
use trvg::graph::complete_multipartite;
use trvg::io::serialize_layout;
use trvg::{decide_trvg, Budget, PartList, Screens, Verdict};

fn main() -> trvg::Result<()> {
    println!("{:>8} {:>8} {:>10} {:>10}", "graph", "search", "nodes", "closed");
    for p in 1..=5 {
        for q in p..=5 {
            let g = complete_multipartite(&PartList::new(vec![p, q])?);
            let t = Instant::now();
            let d = decide_trvg(&g, Budget::default(), Screens::NONE)?;
            let verdict = match &d.verdict {
                Verdict::Yes(_) => "yes",
                Verdict::No(_) => "no",
                Verdict::Unknown { .. } => "unknown",
            };
            println!(
                "{:>8} {:>8} {:>10} {:>10}  {:?}",
                format!("K{p},{q}"),
                verdict,
                d.nodes,
                if classify_bipartite(p, q) { "yes" } else { "no" },
                t.elapsed()
            );
        }
    }

    let k34 = complete_multipartite(&PartList::new(vec![3, 4])?);
    let d = decide_trvg(&k34, Budget::default(), Screens::NONE)?;
    if let Some(cert) = d.verdict.certificate() {
        print!("\nK3,4 certificate:\n{}", serialize_layout(cert));
    }

    let k44 = complete_multipartite(&PartList::new(vec![4, 4])?);
    let d = decide_trvg(&k44, Budget::default(), Screens::ALL)?;
    println!("\nK4,4 with screens: {:?}", d.verdict);
    Ok(())
}
