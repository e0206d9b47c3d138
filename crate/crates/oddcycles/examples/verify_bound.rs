//! End-to-end verification of the (n/k)^k bound: equality cases, a strict
//! case, a bipartite case, and a hypothesis failure.

use oddcycles::proof::verify_theorem;
use oddcycles::ser::rational_string;
use oddcycles::{BlowupSpec, Graph, VertexSet};

fn show(name: &str, g: &Graph, k: usize) -> oddcycles::Result<()> {
    let r = verify_theorem(g, k, false)?;
    print!(
        "{name}: n={} odd_girth={} cycles={} floor={} verdict={}",
        r.n, r.odd_girth, r.cycle_count, r.floor_bound, r.verdict
    );
    if let Some(c1) = &r.claim1 {
        print!(" weight_sum={}", rational_string(&c1.total));
    }
    if let Some(b) = &r.blowup {
        print!(" [blow-up of C{} blobs {:?}]", b.pattern_length, b.blob_sizes);
    }
    println!();
    Ok(())
}

fn main() -> oddcycles::Result<()> {
    for t in 1..=3usize {
        let g = BlowupSpec::new(Graph::cycle(7)?, vec![t; 7])?.build()?;
        show(&format!("balanced blow-up t={t}"), &g, 7)?;
    }

    let loose = Graph::cycle(7)?.with_vertex_appended(&VertexSet::empty())?;
    show("C7 plus isolated vertex", &loose, 7)?;

    show("K5,5 (bipartite)", &Graph::complete_bipartite(5, 5)?, 7)?;

    // hypothesis failure: a pentagon in range of a k=7 question
    let mut bad = Graph::cycle(5)?;
    for _ in 0..4 {
        bad = bad.with_vertex_appended(&VertexSet::empty())?;
    }
    show("C5 plus isolated vertices", &bad, 7)?;
    Ok(())
}
