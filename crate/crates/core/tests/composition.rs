use slicelab::slice::{SliceDomain, SliceFunction};
use slicelab::solver::{compose, solve_depth};

fn all_functions(n: u32, k: u32) -> Vec<SliceFunction> {
    let d = SliceDomain::new(n, k).unwrap();
    (0..1u64 << d.size())
        .map(|b| SliceFunction::from_bits(d, b).unwrap())
        .collect()
}

#[test]
fn composition_is_superadditive_on_small_slices() {
    let pool: Vec<SliceFunction> = [(2, 1), (3, 1)]
        .iter()
        .flat_map(|&(n, k)| all_functions(n, k))
        .collect();
    let depths: Vec<u32> = pool
        .iter()
        .map(|f| solve_depth(f, false).unwrap().depth)
        .collect();
    let mut violations = Vec::new();
    for (f1, d1) in pool.iter().zip(&depths) {
        for (f2, d2) in pool.iter().zip(&depths) {
            let d = solve_depth(&compose(f1, f2).unwrap(), false).unwrap().depth;
            if d < d1 + d2 {
                violations.push((f1.to_json().unwrap(), f2.to_json().unwrap()));
            }
        }
    }
    assert!(violations.is_empty(), "{violations:?}");
}

#[test]
fn composed_domain() {
    let f1 = SliceFunction::constant(SliceDomain::new(2, 1).unwrap(), true).unwrap();
    let f2 = SliceFunction::constant(SliceDomain::new(3, 1).unwrap(), false).unwrap();
    let f = compose(&f1, &f2).unwrap();
    assert_eq!((f.domain().n(), f.domain().k()), (5, 2));
}
