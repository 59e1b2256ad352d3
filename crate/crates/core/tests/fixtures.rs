use cocart::characterize::{agreement, check_all, replay, synthesize_coproduct};
use cocart::fixtures;
use cocart::splitting::{transport_to_karoubi, unsplit_idempotents};
use cocart::universal::is_coproduct;
use cocart::SearchLimit;

const LIMIT: SearchLimit = SearchLimit::DEFAULT;

#[test]
fn verdicts_agree_and_replay_on_every_fixture() {
    for fx in fixtures::all() {
        let (Some(m), Some(s)) = (&fx.magmal, &fx.symmetry) else {
            continue;
        };
        let verdicts = check_all(m, s, fx.magma.as_ref(), LIMIT).unwrap();
        assert!(agreement(&verdicts), "{}: {verdicts:?}", fx.name);
        for v in &verdicts {
            assert!(replay(v, m, Some(s), LIMIT).unwrap(), "{}: {v}", fx.name);
        }
    }
}

#[test]
fn supplied_magmas_synthesize_coproducts() {
    for fx in fixtures::all() {
        let (Some(m), Some(g)) = (&fx.magmal, &fx.magma) else {
            continue;
        };
        for a in m.cat.objects() {
            for b in m.cat.objects() {
                let cospan = synthesize_coproduct(m, g, a, b)
                    .unwrap()
                    .expect("cocartesian fixtures split");
                assert!(is_coproduct(&m.cat, &cospan), "{}", fx.name);
            }
        }
    }
}

#[test]
fn transport_to_the_envelope_revalidates() {
    for fx in fixtures::all() {
        let Some(m) = &fx.magmal else { continue };
        let t = transport_to_karoubi(m, fx.magma.as_ref(), fx.symmetry.as_ref()).unwrap();
        assert!(unsplit_idempotents(&t.karoubi.category).is_empty(), "{}", fx.name);
        assert_eq!(t.magma.is_some(), fx.magma.is_some());
    }
}

#[test]
fn verdicts_survive_the_envelope() {
    // the envelope of an idempotent-complete category is equivalent to it
    for fx in [
        fixtures::terminal(),
        fixtures::join(),
        fixtures::meet(),
        fixtures::double_unit(),
    ] {
        let (m, s) = (fx.magmal.as_ref().unwrap(), fx.symmetry.as_ref().unwrap());
        let t = transport_to_karoubi(m, fx.magma.as_ref(), Some(s)).unwrap();
        let before = check_all(m, s, None, LIMIT).unwrap();
        let after = check_all(&t.magmal, t.symmetry.as_ref().unwrap(), None, LIMIT).unwrap();
        let holds = |vs: &[cocart::characterize::Verdict]| vs.iter().map(|v| v.holds).collect::<Vec<_>>();
        assert_eq!(holds(&before), holds(&after), "{}", fx.name);
    }
}
