use std::collections::BTreeSet;

use proptest::prelude::*;

use cocart::category::{FinCat, Obj};
use cocart_cli::{parse_bundle, serialize_bundle, Bundle};

// Names drawn from an alphabet full of the format's own punctuation.
fn names(n: usize) -> impl Strategy<Value = Vec<String>> {
    proptest::collection::btree_set("[a-c ,=:#\"\\\\\\[\\]>-]{0,5}", n)
        .prop_map(|s: BTreeSet<String>| s.into_iter().collect())
}

/// The preorder generated by `edges` on `n` points, one morphism per
/// related pair.
fn thin(n: usize, edges: &[(usize, usize)], obj_names: &[String], mor_names: &[String]) -> FinCat {
    let mut r: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for &(i, j) in edges.iter().filter(|_| n > 0) {
        r[i % n][j % n] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| r[i][j])
        .collect();
    let morphisms = pairs
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| (mor_names[k].clone(), Obj(i as u32), Obj(j as u32)))
        .collect();
    let mut c = FinCat::new(obj_names[..n].to_vec(), morphisms).unwrap();
    let at = |i: usize, j: usize| c_mor(&pairs, i, j);
    for i in 0..n {
        c.set_identity(Obj(i as u32), at(i, i));
    }
    for &(i, k) in &pairs {
        for &(k2, j) in &pairs {
            if k == k2 {
                c.set_composite(at(k, j), at(i, k), at(i, j)).unwrap();
            }
        }
    }
    c.validated().unwrap()
}

fn c_mor(pairs: &[(usize, usize)], i: usize, j: usize) -> cocart::category::Mor {
    cocart::category::Mor(pairs.iter().position(|&p| p == (i, j)).unwrap() as u32)
}

proptest! {
    #[test]
    fn serialized_bundles_parse_back(
        n in 0usize..4,
        edges in proptest::collection::vec((0usize..4, 0usize..4), 0..5),
        obj_names in names(4),
        mor_names in names(16),
    ) {
        prop_assume!(obj_names.len() == 4 && mor_names.len() == 16);
        let b = Bundle::bare(thin(n, &edges, &obj_names, &mor_names));
        let text = serialize_bundle(&b);
        prop_assert_eq!(parse_bundle(&text).unwrap(), b);
    }
}
