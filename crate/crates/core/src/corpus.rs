//! Every graph of order 2 to 8 up to isomorphism, one graph6 string per line.

const ORDERS: [&str; 7] = [
    include_str!("../data/graph2.g6"),
    include_str!("../data/graph3.g6"),
    include_str!("../data/graph4.g6"),
    include_str!("../data/graph5.g6"),
    include_str!("../data/graph6.g6"),
    include_str!("../data/graph7.g6"),
    include_str!("../data/graph8.g6"),
];

/// The bundled corpus for one order, if present.
pub fn graphs_of_order(n: usize) -> Option<&'static str> {
    ORDERS.get(n.checked_sub(2)?).copied()
}

/// Orders with a bundled corpus.
pub fn orders() -> std::ops::RangeInclusive<usize> {
    2..=8
}
