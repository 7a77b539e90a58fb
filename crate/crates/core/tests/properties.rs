use proptest::prelude::*;
use u3::biclosed::{convex_closure, is_biclosed, two_closure, RootSet};
use u3::descriptor::{BiclosedDescriptor, CONTENT_SEARCH_HEIGHT};
use u3::geometry::{disk_position, rescale};
use u3::roots::locate_root;
use u3::snakes::{build_snake_pair, Outcome};
use u3::truncation::Truncation;
use u3::{act, inversion_set, positive_root_of_edge, IVec3, Word};

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=3, 0..=max).prop_map(|v| Word::from_indices(&v).unwrap())
}

fn nonempty_word(max: usize) -> impl Strategy<Value = Word> {
    word(max).prop_filter("nonempty", |w| !w.is_empty())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn group_action_preserves_the_form(w in word(10), x in -20i64..20, y in -20i64..20, z in -20i64..20) {
        let v = IVec3::from_i64(x, y, z);
        let u = act(&w, &v);
        prop_assert_eq!(u.q(), v.q());
        prop_assert_eq!(act(&w.inverse(), &u), v);
    }

    #[test]
    fn edge_roots_are_positive_and_locate_back(w in word(9), g in 1u8..=3) {
        let g = u3::Generator::new(g).unwrap();
        prop_assume!(w.ascends(g));
        let r = positive_root_of_edge(&w, g).unwrap();
        prop_assert!(r.vec.is_nonnegative());
        prop_assert!(r.vec.q() == 1.into());
        prop_assert_eq!(r.depth as usize, w.len() + 1);
        let e = locate_root(&r.vec).unwrap();
        prop_assert_eq!(e.lower, w);
        prop_assert_eq!(e.gen, g);
        // rescaled roots lie outside the closed disk
        prop_assert!(disk_position(&rescale(&r)) > 0);
    }

    #[test]
    fn inversion_sets_by_sign_test(w in word(8)) {
        let inv = inversion_set(&w);
        prop_assert_eq!(inv.len(), w.len());
        let m = u3::Mat3::of_word(&w.inverse());
        for r in &inv {
            prop_assert!(m.apply(&r.vec).is_nonpositive());
        }
        // roots outside the set stay positive
        for r in Truncation::by_height(30).roots.iter().filter(|r| !inv.contains(r)) {
            prop_assert!(m.apply(&r.vec).is_nonnegative());
        }
    }

    #[test]
    fn finite_and_cofinite_are_complementary_and_biclosed(w in word(6)) {
        let n = 40;
        let fin = BiclosedDescriptor::finite(w.clone()).resolve().unwrap().realize_height(n);
        let cof = BiclosedDescriptor::cofinite(w.clone()).resolve().unwrap().realize_height(n);
        prop_assert!(is_biclosed(&fin, n));
        prop_assert!(is_biclosed(&cof, n));
        let all = Truncation::by_height(n).roots.len();
        prop_assert_eq!(fin.len() + cof.len(), all);
        prop_assert!(fin.iter().all(|r| !cof.contains(r)));
    }

    #[test]
    fn snakes_of_an_inversion_set_meet_at_the_word(w in nonempty_word(8)) {
        let d = BiclosedDescriptor::finite(w.clone()).resolve().unwrap();
        let sp = build_snake_pair(&d.coloring(), 16).unwrap();
        prop_assert_eq!(sp.outcome, Outcome::MeetAt(w));
    }

    #[test]
    fn two_closure_of_two_inversion_sets_is_their_cone(a in word(4), b in word(4)) {
        let (n, m) = (12, 36);
        let sa = BiclosedDescriptor::finite(a).resolve().unwrap().realize_height(2 * m);
        let sb = BiclosedDescriptor::finite(b).resolve().unwrap().realize_height(2 * m);
        let u = RootSet::union([&sa, &sb]);
        let c = two_closure(&u, n, m);
        prop_assert!(c.stable);
        prop_assert_eq!(c.set, convex_closure(&u.restrict_height(m), n));
    }
}

#[test]
fn content_search_reaches_face_lines() {
    // each face line of the identity carries a rank-2 parabolic
    for (i, j) in [(1u8, 2u8), (1, 3), (2, 3)] {
        let f = u3::complex::Face::new(&Word::identity(), u3::Generator::new(i).unwrap(), u3::Generator::new(j).unwrap());
        let c = u3::descriptor::line_content(&f.line(), CONTENT_SEARCH_HEIGHT);
        assert!(matches!(c, u3::descriptor::LineContent::Rank2 { .. }), "{i}{j}");
    }
}
