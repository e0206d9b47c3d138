//! Desk-scale probes of the open bounds: induced cycles in triangle-free
//! graphs, the observation class, and the blow-up leading coefficient with
//! its two disagreeing candidate values.

use oddcycles::search::{conjecture_probe, ProbeReport, ProbeSpec};
use oddcycles::ser::rational_string;

fn main() -> oddcycles::Result<()> {
    match conjecture_probe(ProbeSpec::Conjecture1 { n: 8, k: 5 })? {
        ProbeReport::Conjecture1(r) => println!(
            "induced C5 over triangle-free n=8: max {} <= floor {} over {} classes (holds: {})",
            r.max_count, r.bound_floor, r.classes_examined, r.holds
        ),
        _ => unreachable!(),
    }

    match conjecture_probe(ProbeSpec::Observation { n: 9, k: 8 })? {
        ProbeReport::Observation(r) => println!(
            "induced C8 over the observation class n=9: max {} <= floor {} over {} classes (holds: {})",
            r.max_count, r.bound_floor, r.classes_examined, r.holds
        ),
        _ => unreachable!(),
    }

    match conjecture_probe(ProbeSpec::Conjecture2 { k: 7, l: 3, t_max: 4 })? {
        ProbeReport::Conjecture2(r) => {
            println!(
                "forbidden C3, counted C7 in balanced C5 blow-ups: candidates {} (binomial) vs {} (walks)",
                r.coefficient.binomial_sum,
                rational_string(&r.coefficient.walk_reference)
            );
            for row in &r.fit {
                println!(
                    "  t={} n={:2}: exact count {:>6}, ratio count/t^7 = {}",
                    row.t,
                    row.n,
                    row.exact_count.to_string(),
                    rational_string(&row.ratio)
                );
            }
            println!("  {}", r.note);
        }
        _ => unreachable!(),
    }
    Ok(())
}
