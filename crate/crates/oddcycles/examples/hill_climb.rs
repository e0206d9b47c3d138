//! Seeded hill climbing beyond the exhaustive range: edge toggles under a
//! constraint, plateau moves accepted, deterministic in (seed, budget).

use oddcycles::search::{hill_climb, Constraint, CountMode};

fn main() -> oddcycles::Result<()> {
    let report = hill_climb(
        14,
        7,
        Constraint::OddGirthAtLeast(7),
        CountMode::Cycles,
        42,
        20_000,
    )?;
    println!(
        "n=14 k=7 odd-girth>=7 seed=42 budget=20000: best {} of floor {} (optimum reached: {})",
        report.best_count, report.bound_floor, report.bound_attained
    );
    println!("  {} count evaluations, witnesses: {:?}", report.graphs_examined, report.extremal_graphs);

    let rerun = hill_climb(
        14,
        7,
        Constraint::OddGirthAtLeast(7),
        CountMode::Cycles,
        42,
        20_000,
    )?;
    println!("  rerun with the same seed is identical: {}", rerun.best_count == report.best_count && rerun.extremal_graphs == report.extremal_graphs);

    let pentagon = hill_climb(10, 5, Constraint::TriangleFree, CountMode::Cycles, 1, 20_000)?;
    println!(
        "n=10 k=5 triangle-free seed=1: best {} of floor {} (reached: {})",
        pentagon.best_count, pentagon.bound_floor, pentagon.bound_attained
    );
    Ok(())
}
