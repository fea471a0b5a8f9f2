use specgap::families;
use specgap::quotient;
use specgap::spectra;

fn main() {
    let two_pi2 = 2.0 * std::f64::consts::PI * std::f64::consts::PI;
    // criterion 5 via the quotient path directly
    let t = std::time::Instant::now();
    for n in [402usize, 1002, 10002, 100002] {
        let (g, cells) = families::cubic_gn_with_cells(n).unwrap();
        let mu = quotient::mu_from_quotient_banded(&g, &cells).unwrap();
        let ratio = mu * (n * n) as f64 / two_pi2;
        println!("n={n}: mu={mu:.15e} ratio={ratio:.12} |ratio-1|={:.6e}", (ratio - 1.0).abs());
    }
    println!("quotient path wall: {:.2?}", t.elapsed());

    // dense Jacobi speed check after the contiguous-update rewrite
    let t = std::time::Instant::now();
    let g = families::cubic_gn(402).unwrap();
    let mu = spectra::algebraic_connectivity(&g).unwrap();
    println!("dense mu(402) = {mu:.12e} in {:.2?}", t.elapsed());
    let t = std::time::Instant::now();
    let g = families::cubic_gn(1002).unwrap();
    let mu = spectra::algebraic_connectivity(&g).unwrap();
    println!("dense mu(1002) = {mu:.12e} in {:.2?}", t.elapsed());
}
