//! Classify complete multipartite graphs and build layouts for the
//! representable ones.
//!
//!     cargo run --release --example multipartite [OUT_DIR]

use trvg::families::{classify_multipartite, construct_multipartite};
use trvg::graph::complete_multipartite;
use trvg::svg::{render_svg, RenderOptions};
use trvg::{verify, Mapping, PartList};

fn main() -> trvg::Result<()> {
    let out = std::env::args().nth(1);
    for sizes in [vec![3, 3, 3], vec![1, 3, 4], vec![2, 3, 4], vec![2, 2, 2, 5], vec![1, 2, 3, 3], vec![1, 3, 5]] {
        let parts = PartList::new(sizes.clone())?;
        if !classify_multipartite(&parts) {
            println!("K{sizes:?}: not representable");
            continue;
        }
        let layout = construct_multipartite(&parts)?;
        let report = verify(&layout, &complete_multipartite(&parts), &Mapping::Identity)?;
        println!("K{sizes:?}: {} rectangles, verified = {}", layout.len(), report.ok);
        if let Some(dir) = &out {
            let name = sizes.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("_");
            let path = std::path::Path::new(dir).join(format!("k_{name}.svg"));
            std::fs::write(&path, render_svg(&layout, &RenderOptions { edges: true, ..Default::default() }))?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
