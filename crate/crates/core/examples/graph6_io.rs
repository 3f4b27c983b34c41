//! graph6 and edge-list text I/O: parsing, emitting, round-trips, and the
//! strict validation errors.
//!
//! ```text
//! cargo run --release --example graph6_io
//! ```

use meci::graph::{
    emit_edge_list_text, emit_graph6, parse_edge_list_text, parse_graph6,
};

fn main() {
    // Decoding: size header + column-major upper triangle, 6 bits per
    // printable character offset by 63.
    for s in ["C~", "D??", "Bw", ">>graph6<<DQc"] {
        let g = parse_graph6(s).unwrap();
        println!(
            "{s:<14} -> n = {}, m = {:>2}, connected = {}",
            g.vertex_count(),
            g.edge_count(),
            g.is_connected()
        );
    }

    // Encoding round-trips bit-exactly.
    let g = parse_graph6("DQc").unwrap();
    assert_eq!(emit_graph6(&g), "DQc");
    println!("\nround trip DQc -> DQc ok");

    // The edge-list text format: "n m" then one "u v" line per edge.
    let text = emit_edge_list_text(&g);
    print!("\nedge-list form of DQc:\n{text}");
    assert_eq!(parse_edge_list_text(&text).unwrap(), g);

    // Strict validation: every malformed input names its defect.
    println!("\nrejected inputs:");
    for bad in ["", "D?", "D?~", "C!!", "~?@@"] {
        println!("  {bad:<6} -> {}", parse_graph6(bad).unwrap_err());
    }
}
