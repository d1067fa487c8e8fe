//! Any outerplanar graph gets a representation with at most two bends per
//! path, all paths monotonic.
//!
//! cargo run --example outerplanar_b2m -- [n] [seed]

use epg::b2m::build_b2m;
use epg::embedding::{nice_labeling, test_outerplanar};
use epg::graph::{gen_random, RandomFamily};
use epg::grid::{render, verify, RenderFormat};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("numeric argument"));
    let n = args.next().unwrap_or(12) as usize;
    let seed = args.next().unwrap_or(1);
    let g = gen_random(RandomFamily::ConnectedOuterplanar, n, seed).unwrap();
    print!("{}", g.to_edge_list());

    let emb = test_outerplanar(&g).unwrap();
    let lab = nice_labeling(&g, &emb).unwrap();
    println!("blocks: {}, exploration order: {:?}", emb.blocks.len(), lab.order);

    let rep = build_b2m(&g).unwrap();
    let report = verify(&g, &rep, Some(2), true);
    println!("pass={} max bends={} monotonic={}", report.pass, report.max_bends_seen, report.monotonic_all);
    print!("{}", render(&rep, RenderFormat::Ascii));
}
