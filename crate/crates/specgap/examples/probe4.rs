use specgap::families;
use specgap::quotient;
use specgap::spectra;

fn main() {
    // criterion 1: path oracle over h in [2, 200]
    let t = std::time::Instant::now();
    let mut worst: f64 = 0.0;
    for h in 2..=200usize {
        let g = specgap::graph::Graph::path(h);
        let mu = spectra::algebraic_connectivity(&g).unwrap();
        worst = worst.max((mu - spectra::path_mu_closed_form(h)).abs());
    }
    println!("criterion 1: worst |delta| = {worst:.3e}, wall {:.2?}", t.elapsed());

    // criterion 11 cubic side, using the same Laplacian eigensolve as the report
    let t = std::time::Instant::now();
    let mut worst11: f64 = 0.0;
    for n in (10..=202usize).step_by(2) {
        let (g, cells) = families::cubic_gn_with_cells(n).unwrap();
        let dense = spectra::algebraic_connectivity(&g).unwrap();
        let quot = quotient::mu_from_quotient(&g, &cells).unwrap();
        worst11 = worst11.max((dense - quot).abs());
    }
    println!("criterion 11 cubic up to 202: worst {worst11:.3e}, wall {:.2?}", t.elapsed());
}
