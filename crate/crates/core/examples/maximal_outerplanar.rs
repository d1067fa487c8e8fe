//! Bend numbers of maximal outerplanar graphs: interval layouts along the
//! dual path, one-bend layouts for M-free graphs, and the obstructions.

use epg::embedding::test_outerplanar;
use epg::graph::{Graph, gen_named, Named};
use epg::grid::{render, RenderFormat};
use epg::maxouter::{almost_dual, build_b0, classify, compute_assignment, s3_centers};

fn show(name: &str, g: &Graph) {
    let emb = test_outerplanar(g).unwrap();
    let dual = almost_dual(g, &emb).unwrap();
    println!("== {name}: faces {:?}", dual.faces);
    println!("   3-sun centers: {:?}", s3_centers(&dual));
    match compute_assignment(g, &dual) {
        Ok(a) => println!("   assignment: {:?}", a.assigned),
        Err(e) => println!("   {e}"),
    }
    let c = classify(g).unwrap();
    println!("   b={} bm={} obstruction={}", c.b, c.bm, serde_json::to_string(&c.obstruction).unwrap());
    print!("{}", render(&c.representation, RenderFormat::Ascii));
}

fn main() {
    let edges = [(1, 2), (2, 4), (3, 6), (6, 7), (7, 8), (4, 5), (1, 3), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7), (5, 8), (8, 9), (5, 9)];
    let g9 = Graph::from_edges(9, edges).unwrap();
    let emb = test_outerplanar(&g9).unwrap();
    let b0 = build_b0(&g9, &almost_dual(&g9, &emb).unwrap()).unwrap();
    for (v, p) in &b0.paths {
        println!("P{v} = {:?}", p.corners());
    }
    show("dual path", &g9);
    show("3-sun", &gen_named(Named::NSun(3)).unwrap());
    let m1_eared = Graph::from_edges(
        10,
        [(1, 2), (1, 3), (2, 3), (3, 4), (4, 2), (4, 5), (5, 2), (1, 6), (3, 6), (3, 7), (4, 7), (4, 8), (5, 8), (5, 9), (2, 9), (1, 10), (2, 10)],
    )
    .unwrap();
    show("M1 with ears", &m1_eared);
}
