use std::collections::BTreeSet;

use proptest::prelude::*;

use cocart::category::{CategoryBuilder, FinCat, Obj};
use cocart::concrete::{egger_monoid_laws, egger_tensor_mor, is_associative_table, mu_from_mid, FinSetObj, SetMor};
use cocart::functor::{natural_transformations_between, Functor, NatTrans};
use cocart::splitting::{karoubi_envelope, splittings, Idempotent};
use cocart::SearchLimit;

// one object, identity "1", composite of m_g . m_f read from `table`
fn one_object(k: usize, table: &[usize]) -> FinCat {
    let name = |i: usize| if i == 0 { "1".to_string() } else { format!("m{i}") };
    let mut b = CategoryBuilder::new().object("*").identity("*", "1");
    for i in 1..k {
        b = b.morphism(&name(i), "*", "*");
    }
    b.build_with(|g, f| {
        let idx = |s: &str| s[1..].parse::<usize>().unwrap();
        match (g, f) {
            ("1", x) | (x, "1") => x.to_string(),
            _ => name(table[(idx(g) - 1) * (k - 1) + idx(f) - 1]),
        }
    })
    .unwrap()
}

// identity and associativity straight from the table, identity at index 0
fn table_is_monoid(k: usize, table: &[usize]) -> bool {
    let mul = |g: usize, f: usize| match (g, f) {
        (0, x) | (x, 0) => x,
        _ => table[(g - 1) * (k - 1) + f - 1],
    };
    (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| mul(mul(a, b), c) == mul(a, mul(b, c)))))
}

fn preorder(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for &(i, j) in edges {
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
    r
}

fn thin_category(r: &[Vec<bool>], order: &[(usize, usize)]) -> FinCat {
    let n = r.len();
    let mut b = CategoryBuilder::new();
    for i in 0..n {
        b = b.object(&format!("o{i}"));
    }
    for &(i, j) in order {
        let name = format!("{i}_{j}");
        b = if i == j {
            b.identity(&format!("o{i}"), &name)
        } else {
            b.morphism(&name, &format!("o{i}"), &format!("o{j}"))
        };
    }
    b.build_with(|g, f| {
        let (_, gj) = g.split_once('_').unwrap();
        let (fi, _) = f.split_once('_').unwrap();
        format!("{fi}_{gj}")
    })
    .unwrap()
}

fn pairs_of(r: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = r.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| r[i][j])
        .collect()
}

fn all_families(c: &FinCat, f: &Functor, g: &Functor) -> Vec<NatTrans> {
    let mut out = vec![Vec::new()];
    for a in c.objects() {
        let hom = c.hom(f.obj(a), g.obj(a));
        out = out
            .into_iter()
            .flat_map(|prefix| {
                hom.iter().map(move |&m| {
                    let mut v = prefix.clone();
                    v.push(m);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|components| NatTrans { components }).collect()
}

fn mor(dom: usize, cod: usize, map: Vec<usize>) -> SetMor {
    SetMor::new(FinSetObj::atoms("x", dom), FinSetObj::atoms("x", cod), map).unwrap()
}

fn transformation_monoid(gens: &[Vec<usize>]) -> FinCat {
    let name = |t: &[usize]| format!("t{}", t.iter().map(|x| x.to_string()).collect::<String>());
    let mut elems: BTreeSet<Vec<usize>> = BTreeSet::new();
    let id = vec![0, 1, 2];
    let mut frontier = vec![id.clone()];
    while let Some(t) = frontier.pop() {
        if !elems.insert(t.clone()) {
            continue;
        }
        for g in gens {
            frontier.push(t.iter().map(|&x| g[x]).collect());
        }
    }
    let mut b = CategoryBuilder::new().object("*").identity("*", &name(&id));
    for t in elems.iter().filter(|t| **t != id) {
        b = b.morphism(&name(t), "*", "*");
    }
    let parse = |s: &str| s[1..].bytes().map(|c| (c - b'0') as usize).collect::<Vec<_>>();
    b.build_with(|g, f| {
        let (g, f) = (parse(g), parse(f));
        name(&f.iter().map(|&x| g[x]).collect::<Vec<_>>())
    })
    .unwrap()
}

proptest! {
    #[test]
    fn validation_matches_a_direct_law_check(table in proptest::collection::vec(0usize..3, 4)) {
        let c = one_object(3, &table);
        prop_assert_eq!(c.validate().is_ok(), table_is_monoid(3, &table));
    }

    #[test]
    fn hom_sets_follow_declaration_order(
        n in 1usize..5,
        edges in proptest::collection::vec((0usize..5, 0usize..5), 0..6),
        seed in any::<u64>(),
    ) {
        let r = preorder(n, &edges);
        let mut order = pairs_of(&r);
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let c = thin_category(&r, &order);
        prop_assert!(c.validate().is_ok());
        for a in c.objects() {
            for b in c.objects() {
                let hom = c.hom(a, b);
                prop_assert!(hom.windows(2).all(|w| w[0] < w[1]));
                prop_assert_eq!(hom.len(), r[a.idx()][b.idx()] as usize);
            }
        }
    }

    #[test]
    fn natural_transformations_match_brute_force(
        n in 1usize..4,
        edges in proptest::collection::vec((0usize..4, 0usize..4), 0..5),
        x in 0usize..4,
        y in 0usize..4,
    ) {
        let r = preorder(n, &edges);
        let c = thin_category(&r, &pairs_of(&r));
        let (x, y) = (Obj((x % n) as u32), Obj((y % n) as u32));
        let functors = [Functor::identity(&c), Functor::constant(&c, &c, x), Functor::constant(&c, &c, y)];
        for f in &functors {
            for g in &functors {
                let found = natural_transformations_between(&c, &c, f, g, SearchLimit::DEFAULT).unwrap();
                let brute: Vec<NatTrans> = all_families(&c, f, g)
                    .into_iter()
                    .filter(|t| t.validate(&c, &c, f, g).is_ok())
                    .collect();
                prop_assert_eq!(found, brute);
            }
        }
    }

    #[test]
    fn tensor_of_maps_is_functorial(
        (a, b, c) in (0usize..4, 0usize..4, 0usize..4),
        (d, e, g) in (0usize..4, 0usize..4, 0usize..4),
        seed in any::<[usize; 4]>(),
    ) {
        let pick = |dom: usize, cod: usize, s: usize| {
            let map = (0..dom).map(|i| if cod == 0 { 0 } else { (s >> (2 * i)) % cod }).collect();
            (cod > 0 || dom == 0).then(|| mor(dom, cod, map))
        };
        let maps = (pick(a, b, seed[0]), pick(b, c, seed[1]), pick(d, e, seed[2]), pick(e, g, seed[3]));
        if let (Some(f), Some(f2), Some(h), Some(h2)) = maps {
            let lhs = egger_tensor_mor(&f.then(&f2), &h.then(&h2));
            let rhs = egger_tensor_mor(&f, &h).then(&egger_tensor_mor(&f2, &h2));
            prop_assert_eq!(lhs, rhs);
            let ids = egger_tensor_mor(&SetMor::identity(&f.dom), &SetMor::identity(&h.dom));
            prop_assert!(ids.is_identity());
        }
    }

    #[test]
    fn monoid_laws_on_the_mid_block_are_associativity(table in proptest::collection::vec(0usize..3, 9)) {
        let m = FinSetObj::atoms("m", 3);
        prop_assert_eq!(egger_monoid_laws(&m, &mu_from_mid(&m, &table)), is_associative_table(3, &table));
    }

    #[test]
    fn unit_laws_force_the_outer_blocks(map in proptest::collection::vec(0usize..2, 8)) {
        let m = FinSetObj::atoms("m", 2);
        let mm = cocart::concrete::egger_tensor(&m, &m);
        let mu = SetMor::new(mm, m.clone(), map.clone()).unwrap();
        if egger_monoid_laws(&m, &mu) {
            prop_assert_eq!(&map[..2], &[0, 1]);
            prop_assert_eq!(&map[6..], &[0, 1]);
        }
    }

    #[test]
    fn splittings_are_unique_up_to_unique_iso(
        gens in proptest::collection::vec(proptest::collection::vec(0usize..3, 3), 1..3),
    ) {
        let c = transformation_monoid(&gens);
        prop_assert!(c.validate().is_ok());
        let kar = karoubi_envelope(&c).category;
        for e in kar.idempotents() {
            let idem = Idempotent::new(&kar, e).unwrap();
            let all = splittings(&kar, &idem);
            prop_assert!(!all.is_empty());
            for s1 in &all {
                for s2 in &all {
                    let (to, from) = s1.comparison(&kar, s2);
                    prop_assert_eq!(kar.compose(from, to), kar.id(s1.summand));
                    prop_assert_eq!(kar.compose(to, from), kar.id(s2.summand));
                    prop_assert_eq!(kar.compose(s2.section, to), s1.section);
                }
            }
        }
    }
}
