//! The n-sun is not outerplanar for n >= 4 but still has a monotonic
//! representation with two bends per path.
//!
//! cargo run --example nsun -- [n]

use epg::b2m::build_nsun_b2m;
use epg::graph::{gen_named, Named};
use epg::grid::{render, verify, RenderFormat};

fn main() {
    let n: usize = std::env::args().nth(1).map(|a| a.parse().expect("n")).unwrap_or(5);
    let g = gen_named(Named::NSun(n)).unwrap();
    let rep = build_nsun_b2m(n).unwrap();
    let report = verify(&g, &rep, Some(2), true);
    println!("S{n}: {} vertices, {} edges, pass={}", g.n(), g.m(), report.pass);
    for (v, p) in &rep.paths {
        let role = if *v <= n { "x" } else { "y" };
        println!("{role}{:<3} {:?}", if *v <= n { *v } else { v - n }, p.corners());
    }
    print!("{}", render(&rep, RenderFormat::Ascii));
}
