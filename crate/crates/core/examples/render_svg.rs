//! Writes SVG drawings of a few representations to a directory.
//!
//! cargo run --example render_svg -- [out-dir]

use epg::b2m::{build_b2m, build_nsun_b2m};
use epg::graph::{gen_random, RandomFamily};
use epg::grid::{render, RenderFormat};
use epg::maxouter::classify;

fn main() {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "epg-svg".into()));
    std::fs::create_dir_all(&dir).unwrap();
    let drawings = [
        ("sun6", build_nsun_b2m(6).unwrap()),
        ("outerplanar", build_b2m(&gen_random(RandomFamily::ConnectedOuterplanar, 16, 3).unwrap()).unwrap()),
        ("maxout", classify(&gen_random(RandomFamily::MaximalOuterplanar, 14, 5).unwrap()).unwrap().representation),
    ];
    for (name, rep) in drawings {
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, render(&rep, RenderFormat::Svg)).unwrap();
        println!("{} ({} paths)", path.display(), rep.len());
    }
}
