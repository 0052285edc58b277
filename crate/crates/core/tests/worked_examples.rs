use webfold::tableau::{evacuate, fold, partial_fold, promote, unfold};
use webfold::web::{PlanarWeb, WebJson};
use webfold::web2::{fold2, web2_of_tableau, Matching2};
use webfold::web3::{
    crossed_web, decompose_blocks, domino_of_symmetric_web, symmetric_distances, tableau_of_web, web_of_tableau,
    BlockType, CrossedDiagram,
};
use webfold::{Shape, Tableau};

const RUNNING: &str = "111122213132223333";
const RUNNING_FOLD: &str = "112212121133332323";

fn fixture() -> PlanarWeb {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/running_web.json")).unwrap();
    PlanarWeb::from_json(&serde_json::from_str::<WebJson>(&text).unwrap()).unwrap()
}

#[test]
fn two_row_folding_steps() {
    let t = Tableau::from_rows(vec![vec![1, 3, 4, 7], vec![2, 5, 6, 8]]).unwrap();
    let steps = [
        vec![vec![1, 2, 3, 6], vec![4, 5, 7, 8]],
        vec![vec![1, 2, 5, 6], vec![3, 4, 7, 8]],
        vec![vec![1, 3, 5, 6], vec![2, 4, 7, 8]],
        vec![vec![1, 3, 5, 6], vec![2, 4, 7, 8]],
    ];
    for (j, rows) in steps.into_iter().enumerate() {
        assert_eq!(partial_fold(&t, j + 1).unwrap(), Tableau::from_rows(rows).unwrap(), "f^{}", j + 1);
    }
    let m = web2_of_tableau(&t).unwrap();
    assert_eq!(fold2(&m).unwrap(), web2_of_tableau(&fold(&t).unwrap()).unwrap());
    assert_eq!(fold2(&m).unwrap(), Matching2::new(4, vec![(1, 2), (3, 4), (5, 8), (6, 7)]).unwrap());
}

#[test]
fn running_tableau_and_its_fold() {
    let t = Tableau::from_word(RUNNING).unwrap();
    assert_eq!(t.shape(), &Shape::rectangle(3, 6));
    assert_eq!(evacuate(&t).unwrap(), t);
    let f = fold(&t).unwrap();
    assert_eq!(f.word(), RUNNING_FOLD);
    assert_eq!(unfold(&f).unwrap(), t);
}

#[test]
fn running_web_fixture() {
    let w = fixture();
    assert_eq!(w.n_boundary(), 18);
    assert!(w.is_3web());
    assert!(w.is_symmetrical());
    assert_eq!(tableau_of_web(&w).unwrap().word(), RUNNING);
    assert_eq!(w, web_of_tableau(&Tableau::from_word(RUNNING).unwrap()).unwrap());
    assert_eq!(symmetric_distances(&w).unwrap(), vec![0, 1, 2, 4, 6, 4, 3, 2, 2, 0]);
    assert_eq!(domino_of_symmetric_web(&w).unwrap().word(), RUNNING_FOLD);
}

#[test]
fn even_decomposition_and_crossed_web() {
    let d = Tableau::from_word(RUNNING_FOLD).unwrap();
    let dec = decompose_blocks(&d).unwrap();
    assert_eq!(dec.vertical_pairs, vec![(3, 4), (9, 8)]);
    assert_eq!(dec.compression, Tableau::from_rows(vec![vec![1, 3, 5], vec![2, 4, 8], vec![6, 7, 9]]).unwrap());
    assert!(dec.blocks.iter().all(|b| b.kind != BlockType::Zero));
    assert_eq!(crossed_web(&d).unwrap(), fixture());
}

#[test]
fn odd_decomposition() {
    let d = Tableau::from_rows(vec![vec![1, 2, 3], vec![4, 6, 8], vec![5, 7, 9]]).unwrap();
    let dec = decompose_blocks(&d).unwrap();
    assert_eq!(dec.vertical_pairs, vec![(2, 0), (4, 3)]);
    // C = (·, 1 / ·, 3 / 2, 4)
    assert_eq!(dec.compression.raw_rows(), &[vec![0, 1], vec![0, 3], vec![2, 4]]);
    assert_eq!(dec.compression.shape(), &Shape::new(vec![2, 2, 2], vec![1, 1]).unwrap());
    let w = crossed_web(&d).unwrap();
    assert!(w.is_3web() && w.is_symmetrical());
    let t = tableau_of_web(&w).unwrap();
    assert_eq!(fold(&t).unwrap(), d);
}

#[test]
fn mirror_faces_and_crossing_cases_on_the_running_example() {
    let cd = CrossedDiagram::of_domino(&Tableau::from_word(RUNNING_FOLD).unwrap()).unwrap();
    let web = cd.web();
    for x in web.disk_faces() {
        let xm = cd.mirror_face(x).unwrap();
        assert_eq!(cd.mirror_face(xm).unwrap(), x);
        let want = cd.arc_distance(x, xm).unwrap() - cd.epsilon(x).unwrap();
        assert_eq!(web.web_distance(x, xm).unwrap(), want);
    }
    for (a, b) in cd.diagram.intersecting_pairs() {
        assert!(cd.crossing_case(a, b).is_some());
    }
}

#[test]
fn promotion_turns_the_web() {
    let t = Tableau::from_word(RUNNING).unwrap();
    let w = web_of_tableau(&t).unwrap();
    assert_eq!(w.rotate(), web_of_tableau(&promote(&t).unwrap()).unwrap());
    assert_eq!(w.reflect(), w);
}
