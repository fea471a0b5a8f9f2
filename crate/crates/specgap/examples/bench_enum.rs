fn main() {
    for (n, k) in [(12usize, 3usize), (14, 3), (10, 4), (11, 4)] {
        let t = std::time::Instant::now();
        let graphs = specgap::search::enumerate_connected_regular(n, k, 1_000_000_000).unwrap();
        println!("({n},{k}): {} graphs in {:.2?}", graphs.len(), t.elapsed());
    }
}
