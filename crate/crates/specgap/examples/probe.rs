use specgap::families;
use specgap::quotient::{self, AsymFamily};
use specgap::search;
use specgap::spectra;
use specgap::tol::Tolerances;

fn main() {
    let tol = Tolerances::default();

    // G8 vs G8'
    let both = families::small_quartic_min(8).unwrap();
    let mu0 = spectra::algebraic_connectivity(&both[0]).unwrap();
    let mu1 = spectra::algebraic_connectivity(&both[1]).unwrap();
    println!("mu(G8)  = {mu0:.12}");
    println!("mu(G8') = {mu1:.12}");

    // trig identity check at m = 1..4
    for m in 1..=4usize {
        let s3: f64 = (1..=m)
            .map(|i| {
                let c = ((2 * i - 1) as f64 * std::f64::consts::PI / (2 * m) as f64).cos();
                c * c
            })
            .sum();
        println!("m={m}: sum cos^2((2i-1)pi/2m) = {s3:.12}  (claim: {})", m as f64 / 2.0);
    }

    // criterion 5 ratios via quotient
    let t = std::time::Instant::now();
    let rows = quotient::asymptotics_table(&[402, 1002, 10002, 100002], AsymFamily::CubicGn, &tol).unwrap();
    for r in &rows {
        println!("n={}: mu={:.6e} ratio={:.9} |ratio-1|={:.3e} tau_ratio={:.9}", r.n, r.mu, r.mu_ratio, (r.mu_ratio - 1.0).abs(), r.tau_ratio);
    }
    println!("asymptotics wall: {:.2?}", t.elapsed());

    // quartic certification small
    for n in [8usize, 9, 10, 11] {
        let t = std::time::Instant::now();
        let cert = search::verify_conjecture_314(n, search::DEFAULT_BUDGET, &tol).unwrap();
        println!(
            "quartic n={n}: total={} min_mu={:.9} matches={:?} [{:?}]",
            cert.total_enumerated, cert.min_mu, cert.matches_expected, t.elapsed()
        );
    }

    // cubic certification
    for n in [10usize, 12, 14] {
        let t = std::time::Instant::now();
        let cert = search::verify_cubic_theorem(n, search::DEFAULT_BUDGET, &tol).unwrap();
        println!(
            "cubic n={n}: total={} min_mu={:.9} matches={:?} [{:?}]",
            cert.total_enumerated, cert.min_mu, cert.matches_expected, t.elapsed()
        );
    }
}
