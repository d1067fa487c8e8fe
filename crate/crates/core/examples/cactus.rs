//! Cacti: interval layouts exactly when MC-free, and monotonic one-bend
//! layouts always.

use epg::cactus::{build_b1m_cactus, classify_cactus, decompose_cactus, is_mc_free};
use epg::graph::{gen_named, gen_random, Graph, Named, RandomFamily};
use epg::grid::{render, verify, RenderFormat};

fn show(name: &str, g: &Graph) {
    let dec = decompose_cactus(g).unwrap();
    println!("== {name}: cycles {:?}, bridges {}", dec.cycles, dec.bridges.len());
    if let Err(w) = is_mc_free(g, &dec) {
        println!("   obstruction {:?} at {:?}", w.kind, w.vertex_map);
    }
    let c = classify_cactus(g).unwrap();
    println!("   b={} bm={}", c.b, c.bm);
    let b1m = build_b1m_cactus(g, &dec).unwrap();
    println!("   one-bend monotonic layout verifies: {}", verify(g, &b1m, Some(1), true).pass);
    print!("{}", render(&c.representation, RenderFormat::Ascii));
}

fn main() {
    show("triangle chain", &Graph::from_edges(7, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5), (5, 6), (6, 7)]).unwrap());
    show("C5", &gen_named(Named::Cycle(5)).unwrap());
    show("M2", &gen_named(Named::M2).unwrap());
    show("M3", &gen_named(Named::M3).unwrap());
    show("random", &gen_random(RandomFamily::Cactus, 14, 7).unwrap());
}
