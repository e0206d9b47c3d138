//! graph6 and edge-list round trips.

use oddcycles::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, Graph};

fn main() -> oddcycles::Result<()> {
    for record in ["C~", "A?", "Bg", "Dhc", ">>graph6<<C~"] {
        let g = parse_graph6(record)?;
        println!(
            "{record:>12} -> n={} m={:2} -> {}",
            g.n(),
            g.edge_count(),
            write_graph6(&g)?
        );
    }

    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )?;
    let record = write_graph6(&petersen)?;
    println!("petersen as graph6: {record}");
    assert_eq!(parse_graph6(&record)?, petersen);

    let text = write_edge_list(&petersen);
    print!("petersen as edge list:\n{text}");
    assert_eq!(parse_edge_list(&text)?, petersen);
    Ok(())
}
