#![no_main]

use libfuzzer_sys::fuzz_target;
use lincolor_core::io::{parse_graph, Format};
use lincolor_core::linear_coloring::verify_linear_coloring;
use lincolor_core::linear_color;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let format = if first & 1 == 0 { Format::EdgeList } else { Format::Dimacs };
    let Ok(g) = parse_graph(text, format) else { return };
    if g.n() > 64 {
        return;
    }
    let c = linear_color(&g);
    assert!(verify_linear_coloring(&g, c.colors()).unwrap().is_linear());
});
