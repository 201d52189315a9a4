//! Complements of squared cycles: known status, induced K_{3,3,3}
//! witnesses, and what the exhaustive search says about every n.
//!
//!     cargo run --release --example squared_cycles

use std::time::Instant;

use trvg::families::classify_dn2;
use trvg::graph::{d2, find_induced_k333, K333Search};
use trvg::{decide_trvg, verify, Budget, Mapping, Screens, Verdict};

fn main() -> trvg::Result<()> {
    for n in 5..=20 {
        let g = d2(n)?;
        let status = classify_dn2(n)?;
        let witness = match find_induced_k333(&g, None)? {
            K333Search::Found(w) => w.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" "),
            _ => "-".into(),
        };
        let t = Instant::now();
        let d = decide_trvg(&g, Budget::default(), Screens::NONE)?;
        let search = match &d.verdict {
            Verdict::Yes(cert) => format!("yes (verified {})", verify(cert, &g, &Mapping::Identity)?.ok),
            Verdict::No(_) => "no".into(),
            Verdict::Unknown { .. } => "unknown".into(),
        };
        println!("n={n:>2} {status:?}: search {search}, {} nodes, {:?}; K333 {witness}", d.nodes, t.elapsed());
    }
    Ok(())
}
