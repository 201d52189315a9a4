//! Render the stored layouts as SVG, with strips for a staircase.
//!
//!     cargo run --example render [OUT_DIR]

use std::path::PathBuf;

use trvg::families::{fixture_layout, Fixture};
use trvg::io::parse_layout;
use trvg::svg::{render_svg, RenderOptions};

fn main() -> trvg::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().display().to_string()));
    std::fs::create_dir_all(&dir)?;
    let edges = RenderOptions { edges: true, ..Default::default() };
    for f in [Fixture::Fig1K5, Fixture::Fig6bItrvg, Fixture::Fig7aGprime] {
        let path = dir.join(format!("{}.svg", f.name()));
        std::fs::write(&path, render_svg(&fixture_layout(f), &edges))?;
        println!("wrote {}", path.display());
    }

    let staircase = parse_layout(
        r#"{"mode":"trvg","rects":[
            {"id":"B1","x":["-7.85","-6.35"],"y":[-3,"-1.5"]},
            {"id":"B2","x":["-5.6","-4.1"],"y":[-1,"0.5"]},
            {"id":"B3","x":["-3.6","-2.1"],"y":["1.25","2.75"]}]}"#,
    )?;
    for s in staircase.strips(&["B1", "B2", "B3"])? {
        println!("{:?} strip ({}, {}) between {} and {}", s.orientation, s.lo, s.hi, s.between.0, s.between.1);
    }
    let opts = RenderOptions { strips: vec!["B1".into(), "B2".into(), "B3".into()], bbox: true, edges: false };
    let path = dir.join("staircase.svg");
    std::fs::write(&path, render_svg(&staircase, &opts))?;
    println!("wrote {}", path.display());
    Ok(())
}
