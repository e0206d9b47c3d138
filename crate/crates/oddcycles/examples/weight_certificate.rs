//! The weight certificate, step by step on the doubled C7 blow-up: good
//! sequences, candidate-set sizes, exact weights, the weight-sum equality,
//! and the inductive prefix bound.

use std::ops::ControlFlow;

use oddcycles::proof::{a_sets, claim1_prefix_bound, claim1_report, good_sequences, weight};
use oddcycles::ser::rational_string;
use oddcycles::{enumerate_cycles, BlowupSpec, Graph};

fn main() -> oddcycles::Result<()> {
    let g = BlowupSpec::new(Graph::cycle(7)?, vec![2; 7])?.build()?;

    let mut first = None;
    enumerate_cycles(&g, 7, true, |c| {
        first = Some(c.clone());
        ControlFlow::Break(())
    })?;
    let cycle = first.expect("the blow-up has seven-cycles");
    println!("cycle {:?}", cycle.vertices());

    let sequences = good_sequences(&cycle)?;
    println!("its {} good sequences (positions 2 and 3 swapped):", sequences.len());
    for d in sequences.iter().take(3) {
        let profile = a_sets(&g, d)?;
        println!(
            "  {:?} rotation {} reversed {}: set sizes {:?}, weight {}",
            d.vertices(),
            d.rotation(),
            d.reversed(),
            profile.sizes(),
            rational_string(&weight(&g, d)?)
        );
    }
    println!("  ...");

    let report = claim1_report(&g, 7)?;
    println!(
        "weight sum over all {} cycles x {} sequences each = {} (at most one: {})",
        report.cycle_count,
        14,
        rational_string(&report.total),
        report.holds
    );

    // the inductive invariant behind the sum: prefixes bound their extensions
    for len in [1usize, 2, 4, 7] {
        let prefix = &sequences[0].vertices()[..len];
        let pb = claim1_prefix_bound(&g, prefix, 7)?;
        println!(
            "prefix {:?}: {} sequences extend it, lhs {} <= rhs {} ({})",
            prefix,
            pb.sequences_matched,
            rational_string(&pb.lhs),
            rational_string(&pb.rhs),
            pb.holds
        );
    }
    Ok(())
}
