from src.delivery.report import Check, VerificationReport, format_check_lines, format_table


def test_empty_report():
    report = VerificationReport()
    assert report.passed
    assert format_table(report) == "no checks run"
    assert format_check_lines(report) == ""


def test_mixed_report():
    report = VerificationReport()
    report.add("winding", True, "ok")
    report.add("certificate", False, "verify=False")
    assert not report.passed
    assert report.failures() == [Check("certificate", False, "verify=False")]
    assert format_check_lines(report) == "CHECK winding PASS\nCHECK certificate FAIL"
    frame = report.to_frame()
    assert list(frame.columns) == ["check", "status", "detail"]
    assert frame["status"].tolist() == ["PASS", "FAIL"]
    assert format_table(report).endswith("1/2 checks passed")


def test_failures_are_logged(caplog):
    report = VerificationReport()
    report.add("lambda", False, "mismatch")
    assert "Check lambda failed: mismatch" in caplog.text
