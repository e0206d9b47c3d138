//! Exact k-cycle and induced k-cycle counts, and the blow-up product law:
//! a k-cycle blow-up hosts exactly (product of blob sizes) many k-cycles.

use std::ops::ControlFlow;

use oddcycles::{count_cycles, count_induced_cycles, enumerate_cycles, BlowupSpec, Graph};

fn main() -> oddcycles::Result<()> {
    let c7 = Graph::cycle(7)?;
    println!("C7:               {} seven-cycles", count_cycles(&c7, 7)?);

    for t in 1..=4usize {
        let g = BlowupSpec::new(Graph::cycle(7)?, vec![t; 7])?.build()?;
        println!(
            "C7 blow-up t={t}:  {} seven-cycles on {} vertices (product law: {t}^7)",
            count_cycles(&g, 7)?,
            g.n()
        );
    }

    let k4 = Graph::complete(4)?;
    println!(
        "K4:               {} triangles, {} four-cycles, {} induced four-cycles",
        count_cycles(&k4, 3)?,
        count_cycles(&k4, 4)?,
        count_induced_cycles(&k4, 4)?
    );

    // enumeration streams canonical representatives in lexicographic order
    let g = BlowupSpec::new(Graph::cycle(5)?, vec![2, 1, 1, 1, 1])?.build()?;
    println!("pentagons of the [2,1,1,1,1] blow-up of C5:");
    enumerate_cycles(&g, 5, false, |c| {
        println!("  {:?}", c.vertices());
        ControlFlow::Continue(())
    })?;
    Ok(())
}
