//! The independent checkers: interval recognition, the exhaustive grid
//! search, direct M-freeness and exact bend numbers of small graphs.

use epg::graph::{gen_named, Graph, Named};
use epg::oracle::{bend_number_exact, bounded_grid_search, default_bound, is_interval, m_free_direct, DEFAULT_BUDGET};

fn main() {
    let c4 = gen_named(Named::Cycle(4)).unwrap();
    let s3 = gen_named(Named::NSun(3)).unwrap();
    let k3 = Graph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
    for (name, g) in [("K3", &k3), ("C4", &c4), ("S3", &s3)] {
        println!("{name}: interval={}", is_interval(g).unwrap());
    }

    for (name, g, k, mono) in [("C4", &c4, 0, false), ("C4", &c4, 1, true), ("S3", &s3, 1, false)] {
        let r = bounded_grid_search(g, k, mono, default_bound(g.n(), k), DEFAULT_BUDGET);
        println!("{name} k={k} monotonic={mono}: {:?} after {} nodes", r.status, r.nodes_expanded);
        if let Some(rep) = r.rep {
            print!("{}", rep.to_json());
        }
    }

    println!("S3 M-free: {}", m_free_direct(&s3).unwrap());
    for (name, g) in [("K3", &k3), ("C4", &c4)] {
        let e = bend_number_exact(g, DEFAULT_BUDGET);
        println!("{name}: b={:?} bm={:?}", e.b, e.bm);
    }
    // The monotonic question for S3 is far beyond a small budget; the
    // answer comes back open rather than wrong.
    let e = bend_number_exact(&s3, 2_000);
    println!("S3: b={:?} bm={:?} (bm known to be at least {})", e.b, e.bm, e.bm_lower);
}
