//! Exhaustive search over isomorphism classes: the pentagon story on 8
//! vertices and a sweep of the odd-girth-7 class.

use oddcycles::proof::recognize_cycle_blowup;
use oddcycles::search::{exhaustive_search, Constraint, CountMode};
use oddcycles::parse_graph6;

fn main() -> oddcycles::Result<()> {
    let pentagon = exhaustive_search(8, 5, Constraint::TriangleFree, CountMode::Cycles)?;
    println!(
        "triangle-free, n=8, pentagons: best {} over {} classes (floor {})",
        pentagon.best_count, pentagon.graphs_examined, pentagon.bound_floor
    );
    for g6 in &pentagon.extremal_graphs {
        let g = parse_graph6(g6)?;
        let shape = match recognize_cycle_blowup(&g, 5) {
            Some(b) => format!("blow-up of C5, blobs {:?}", b.blob_sizes),
            None => "sporadic (not a blow-up)".to_string(),
        };
        println!("  {g6}: {} edges, {shape}", g.edge_count());
    }

    for n in 7..=9usize {
        let sweep = exhaustive_search(n, 7, Constraint::OddGirthAtLeast(7), CountMode::Cycles)?;
        println!(
            "odd girth >= 7, n={n}, seven-cycles: best {} over {} classes (floor {}, attained: {})",
            sweep.best_count, sweep.graphs_examined, sweep.bound_floor, sweep.bound_attained
        );
    }
    Ok(())
}
