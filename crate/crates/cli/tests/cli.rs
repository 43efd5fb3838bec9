mod common;

use common::{run_bin, stdout, write_measure, M3};

#[test]
fn kernel_report_on_three_point_measure() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = write_measure(&dir, "m3.json", M3);
    let out = run_bin(&[
        "kernel",
        "--measure",
        m3.to_str().unwrap(),
        "--n",
        "2",
        "--m",
        "1",
        "--x",
        "0",
        "--y",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for route in [
        "sum",
        "two_point_det",
        "integral",
        "one_point_det",
        "pfaffian_sqrt",
    ] {
        assert!(
            text.contains(&format!("route={route} value=1/3\n")),
            "{text}"
        );
    }
    assert!(text.ends_with("agreement=true\n"));
}

#[test]
fn kernel_report_negative_coordinates_and_route_filter() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = write_measure(&dir, "m3.json", M3);
    let out = run_bin(&[
        "kernel",
        "--measure",
        m3.to_str().unwrap(),
        "--n",
        "2",
        "--m",
        "1",
        "--x",
        "-1/2",
        "--y",
        "-2",
        "--routes",
        "sum,integral",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // 1/3 + (-1/2)(-2)/2
    assert_eq!(
        stdout(&out),
        "route=sum value=5/6\nroute=integral value=5/6\nagreement=true\n"
    );
}

#[test]
fn kernel_report_coincident_points() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = write_measure(&dir, "m3.json", M3);
    let out = run_bin(&[
        "kernel",
        "--measure",
        m3.to_str().unwrap(),
        "--n",
        "2",
        "--m",
        "2",
        "--x",
        "0,0",
        "--y",
        "1,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("route=sum skipped=coincident\n"));
    assert!(text.contains("route=two_point_det skipped=coincident\n"));
    assert!(text.contains("route=one_point_det skipped=coincident\n"));
    assert!(text.contains("route=integral value=1/6\n"));
    assert!(text.ends_with("agreement=true\n"));
}

#[test]
fn kernel_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = write_measure(&dir, "m3.json", M3);
    let path = m3.to_str().unwrap();
    let cases: [&[&str]; 5] = [
        &[
            "kernel",
            "--measure",
            path,
            "--n",
            "2",
            "--m",
            "3",
            "--x",
            "0,1,2",
            "--y",
            "0,1,2",
        ],
        &[
            "kernel",
            "--measure",
            path,
            "--n",
            "2",
            "--m",
            "1",
            "--x",
            "0,1",
            "--y",
            "1",
        ],
        &[
            "kernel",
            "--measure",
            path,
            "--n",
            "2",
            "--m",
            "1",
            "--x",
            "0.5",
            "--y",
            "1",
        ],
        &[
            "kernel",
            "--measure",
            path,
            "--n",
            "2",
            "--m",
            "1",
            "--x",
            "0",
            "--y",
            "1",
            "--routes",
            "magic",
        ],
        &[
            "kernel",
            "--measure",
            path,
            "--n",
            "2",
            "--m",
            "1",
            "--x",
            "0",
        ],
    ];
    for args in cases {
        let out = run_bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn ortho_and_schur_reports() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = write_measure(&dir, "m3.json", M3);
    let path = m3.to_str().unwrap();
    let out = run_bin(&["ortho", "--measure", path, "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "k=0 coefficients=1 norm=3\nk=1 coefficients=0,1 norm=2\nk=2 coefficients=-2/3,0,1\n"
    );
    let out = run_bin(&["schur", "--measure", path, "--n", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lambda=(1) mu=(1) coefficient=1/2\n"));
    assert!(stdout(&out).ends_with("reconstruction=true\n"));
}

#[test]
fn verify_examples() {
    let out = run_bin(&[
        "verify", "--suite", "rains", "--trials", "50", "--seed", "42", "--max-n", "0", "--max-m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "suite=rains trials=50 status=PASS\n");

    let out = run_bin(&[
        "verify",
        "--suite",
        "route-agreement",
        "--trials",
        "20",
        "--seed",
        "7",
        "--max-n",
        "4",
        "--max-m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "suite=route-agreement trials=20 status=PASS\n"
    );

    let out = run_bin(&[
        "verify", "--suite", "nonsense", "--trials", "1", "--seed", "1", "--max-n", "1", "--max-m",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_kernel_suite_needs_degree() {
    let out = run_bin(&[
        "verify", "--suite", "hodge", "--trials", "1", "--max-n", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn measure_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            "dup.json",
            r#"{"points":["1","1"],"weights":["1","1"]}"#,
            "invalid measure",
        ),
        (
            "zero.json",
            r#"{"points":["1","2"],"weights":["1","0"]}"#,
            "invalid measure",
        ),
        (
            "dec.json",
            r#"{"points":["0.5"],"weights":["1"]}"#,
            "parse error",
        ),
        ("bad.json", r#"{"points":["1"],"#, "parse error"),
    ];
    for (name, json, message) in cases {
        let path = write_measure(&dir, name, json);
        let out = run_bin(&["ortho", "--measure", path.to_str().unwrap(), "--n", "1"]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains(message),
            "{name}"
        );
    }
    let missing = dir.path().join("missing.json");
    let out = run_bin(&["ortho", "--measure", missing.to_str().unwrap(), "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let signed = write_measure(
        &dir,
        "signed.json",
        r#"{"points":["1/2"],"weights":["-2/3"]}"#,
    );
    let out = run_bin(&["ortho", "--measure", signed.to_str().unwrap(), "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "k=0 coefficients=1 norm=-2/3\nk=1 coefficients=-1/2,1\n"
    );
}
