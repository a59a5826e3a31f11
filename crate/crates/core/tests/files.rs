use std::collections::BTreeMap;

use sdp::assoc;
use sdp::internal::{extract_total_system, SdpCandidate};
use sdp::random::{self, random_normalized};
use sdp::system::{GroupSpec, SystemFileError};
use sdp::{FiniteGroup, GroupFile, PermGroup, SystemError, SystemFile, TotalSystem};

fn reload(sys: &TotalSystem) -> TotalSystem {
    let text = serde_json::to_string(&sys.to_file()).unwrap();
    let file: SystemFile = serde_json::from_str(&text).unwrap();
    file.to_system(|_| Err::<GroupFile, ()>(())).unwrap()
}

#[test]
fn random_systems_survive_a_json_round_trip() {
    let mut rng = random::rng(3);
    for shape in [[2, 3, 2], [3, 2, 3], [2, 2, 2]] {
        let sys = random_normalized(shape.iter().map(|&n| FiniteGroup::cyclic(n)).collect(), &mut rng);
        assert_eq!(reload(&sys), sys);
    }
}

#[test]
fn extracted_s4_survives_a_json_round_trip() {
    let p = PermGroup::symmetric(4);
    let gens = vec![
        vec![p.elem(&[&[1, 2], &[3, 4]]), p.elem(&[&[1, 3], &[2, 4]])],
        vec![p.elem(&[&[1, 2, 3]])],
        vec![p.elem(&[&[1, 2]])],
    ];
    let sys = extract_total_system(&SdpCandidate::generated_by(p.group, &gens).unwrap()).unwrap();
    let back = reload(&sys);
    assert_eq!(back, sys);
    assert!(assoc::all_pass(&assoc::check_all_elementary(&back)));
}

#[test]
fn group_paths_go_through_the_loader() {
    let file = SystemFile {
        r: 2,
        groups: vec![GroupSpec::Path("z3".into()), GroupSpec::Inline(FiniteGroup::cyclic(2).to_file())],
        phi: BTreeMap::from([("2,1".to_string(), vec![vec![0, 1, 2], vec![0, 2, 1]])]),
        bracket: BTreeMap::new(),
    };
    let mut asked = Vec::new();
    let sys = file
        .to_system(|p| {
            asked.push(p.to_string());
            Ok::<_, ()>(FiniteGroup::cyclic(3).to_file())
        })
        .unwrap();
    assert_eq!(asked, ["z3"]);
    assert_eq!(sys.order(), 6);
    assert!(assoc::brute_force_associative(&sys, Default::default()).unwrap().holds);
    let failing = file.to_system(|_| Err("unreadable"));
    assert!(matches!(failing, Err(SystemFileError::Load("unreadable"))));
}

#[test]
fn malformed_system_files_are_rejected() {
    let parse = |s: &str| serde_json::from_str::<SystemFile>(s).unwrap().to_system(|_| Err::<GroupFile, ()>(()));
    let z2 = r#"{"order":2,"table":[[0,1],[1,0]]}"#;
    let missing = format!(r#"{{"r":2,"groups":[{z2},{z2}]}}"#);
    assert!(matches!(parse(&missing), Err(SystemFileError::System(SystemError::MissingTable(_)))));
    let rank = format!(r#"{{"r":3,"groups":[{z2},{z2}]}}"#);
    assert!(matches!(parse(&rank), Err(SystemFileError::System(SystemError::RankMismatch { .. }))));
    let range = format!(r#"{{"r":2,"groups":[{z2},{z2}],"phi":{{"2,1":[[0,1],[0,2]]}}}}"#);
    assert!(matches!(parse(&range), Err(SystemFileError::System(SystemError::ValueOutOfRange { .. }))));
    let key = format!(r#"{{"r":2,"groups":[{z2},{z2}],"phi":{{"2;1":[[0,1],[0,1]]}}}}"#);
    assert!(matches!(parse(&key), Err(SystemFileError::System(SystemError::BadKey(_)))));
    assert!(serde_json::from_str::<SystemFile>(r#"{"r":1,"groups":[],"extra":1}"#).is_err());
}
