use std::time::Instant;

use hypercf::contfrac;
use hypercf::gf::Field;
use hypercf::hyperquad::{
    convergent_residual_valuations, root_series, HyperquadSpec, LambdaStream,
};

fn main() {
    let f = Field::new(2, 3).unwrap();
    let spec = HyperquadSpec::new(&f, 3, &[3, 5, 2, 7], 6, 4).unwrap();
    let n = 200usize;
    let prec = 2 * n + spec.r() as usize * spec.ell() + 24;

    let t0 = Instant::now();
    let root = root_series(&spec, prec).unwrap();
    let t1 = Instant::now();
    let cf = contfrac::expand(&root, n, true).unwrap();
    let t2 = Instant::now();
    let mut stream = LambdaStream::new(&spec);
    let want = stream.quotient_prefix(n);
    assert_eq!(cf.quotients.len(), n, "only {} certified", cf.quotients.len());
    assert_eq!(cf.quotients, want);
    let t3 = Instant::now();
    let vals = convergent_residual_valuations(&spec, 5..=100);
    assert!(vals.windows(2).all(|w| w[1].1 < w[0].1));
    let t4 = Instant::now();

    println!("root_series: {:?}", t1 - t0);
    println!("expand:      {:?}", t2 - t1);
    println!("stream+cmp:  {:?}", t3 - t2);
    println!("residuals:   {:?}", t4 - t3);
    println!("total:       {:?}", t4 - t0);
}
