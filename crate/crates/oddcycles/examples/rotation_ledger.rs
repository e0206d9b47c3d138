//! The per-cycle rotation ledger: the size table over all rotations, the
//! n(k-1) bound with its per-vertex breakdown, and the distance-two star
//! property.

use std::ops::ControlFlow;

use oddcycles::proof::{claim2_report, size_matrix, star_property, vertex_contribution};
use oddcycles::ser::rational_string;
use oddcycles::{enumerate_cycles, BlowupSpec, Graph, VertexSet};

fn main() -> oddcycles::Result<()> {
    let g = BlowupSpec::new(Graph::cycle(7)?, vec![2; 7])?.build()?;
    let mut first = None;
    enumerate_cycles(&g, 7, true, |c| {
        first = Some(c.clone());
        ControlFlow::Break(())
    })?;
    let cycle = first.expect("seven-cycle");

    let m = size_matrix(&g, &cycle)?;
    println!("size table for {:?} (rows A_0..A_6, columns rotations):", cycle.vertices());
    for row in &m.entries {
        println!("  {row:?}");
    }

    let ledger = claim2_report(&g, &cycle)?;
    println!(
        "ledger sum {} vs n(k-1) = {} -> equality: {}, condition: {}",
        rational_string(&ledger.lhs),
        ledger.rhs,
        ledger.equality,
        ledger.equality_condition_holds
    );

    // a single vertex's share, with its case bound
    let off_cycle = (0..g.n()).find(|v| !cycle.vertex_set().contains(*v)).unwrap();
    let vc = vertex_contribution(&g, &cycle, off_cycle)?;
    println!(
        "vertex {} ({} cycle neighbours): contributes {} (bound {}), memberships {:?}",
        vc.vertex,
        vc.neighbors_on_cycle,
        rational_string(&vc.value),
        vc.case_bound.as_ref().map(rational_string).unwrap_or_default(),
        vc.memberships
    );

    let sp = star_property(&g, &cycle, off_cycle)?;
    println!(
        "star property at {}: holds {}, distance-two cycle vertices {:?}",
        sp.vertex, sp.holds, sp.distance_two
    );

    // a strict case: hang an isolated vertex next to a plain C7
    let loose = Graph::cycle(7)?.with_vertex_appended(&VertexSet::empty())?;
    let mut c7 = None;
    enumerate_cycles(&loose, 7, true, |c| {
        c7 = Some(c.clone());
        ControlFlow::Break(())
    })?;
    let ledger = claim2_report(&loose, &c7.unwrap())?;
    println!(
        "C7 plus an isolated vertex: {} < {} (strict, the extra vertex contributes nothing)",
        rational_string(&ledger.lhs),
        ledger.rhs
    );
    Ok(())
}
