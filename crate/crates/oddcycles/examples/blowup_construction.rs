//! Blow-up constructions: balanced blob splits, odd girth, graph6 output.

use oddcycles::{balanced_blobs, write_graph6, BlowupSpec, Graph};

fn main() -> oddcycles::Result<()> {
    println!("balanced splits: 14/7 = {:?}, 8/5 = {:?}", balanced_blobs(14, 7)?, balanced_blobs(8, 5)?);

    for (m, n) in [(7usize, 14usize), (5, 8), (9, 20)] {
        let spec = BlowupSpec::balanced(Graph::cycle(m)?, n)?;
        let g = spec.build()?;
        println!(
            "C{m} blow-up on {n}: blobs {:?}, odd girth {}, {} edges, graph6 {}",
            spec.blobs,
            g.odd_girth(),
            g.edge_count(),
            write_graph6(&g)?
        );
    }

    // explicit blob sizes per pattern vertex
    let spec = BlowupSpec::new(Graph::cycle(5)?, vec![2, 2, 2, 1, 1])?;
    let g = spec.build()?;
    println!(
        "pentagon blow-up [2,2,2,1,1]: n={}, triangle-free: {}",
        g.n(),
        g.odd_girth().at_least(5)
    );
    Ok(())
}
