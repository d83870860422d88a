"""
test_document.py - Tests for JSON certificate documents.
"""

import json

import pytest

from stlc_interp.errors import CertificateError
from stlc_interp.interpolation import Side, certify, make_partition, verify_certificate
from stlc_interp.surface.document import (
    dump_document,
    from_document,
    load_document,
    read_document,
    to_document,
    write_document,
)
from stlc_interp.syntax import App, Arrow, Base, Case, Cst, Sum, Var

P = Base("P")
Q = Base("Q")
R = Base("R")


@pytest.fixture
def case_cert(lang_pqr):
    ctx = (Sum(P, Q), Arrow(P, R), Arrow(Q, R))
    t = Case(R, Var(2), App(Var(2), Var(0)), App(Var(1), Var(0)))
    return certify(lang_pqr, make_partition(ctx, "sts"), t, R)


class TestDocuments:
    """Writing and re-reading certificates."""

    def test_required_fields(self, case_cert):
        """Verify that a document carries every required field."""
        doc = to_document(case_cert, verify_certificate(case_cert))
        data = json.loads(dump_document(doc))
        for key in ("input", "M", "l", "r", "vocab_report", "trace", "verdict"):
            assert key in data
        assert data["verdict"] == "PASS"
        assert data["input"]["tags"] == "sts"

    def test_reload_verifies_with_digest(self, case_cert):
        """Verify that a reloaded document verifies against its digest."""
        doc = to_document(case_cert, verify_certificate(case_cert))
        reloaded = load_document(dump_document(doc))
        cert = from_document(reloaded)
        assert cert == case_cert
        assert verify_certificate(cert, expected_digest=reloaded.digest).passed

    def test_byte_stable(self, case_cert):
        """Verify that serializing twice gives the same bytes."""
        report = verify_certificate(case_cert)
        assert dump_document(to_document(case_cert, report)) == dump_document(
            to_document(case_cert, report)
        )

    def test_constant_tags_survive(self, lang_constants):
        """Verify that constant tags survive a reload."""
        p = make_partition((), "", {"f": Side.SOURCE, "d": Side.TARGET})
        cert = certify(lang_constants, p, App(Cst("f"), Cst("d")), P)
        doc = to_document(cert, verify_certificate(cert))
        assert doc.input.const_tags == {"d": "t", "f": "s"}
        assert from_document(load_document(dump_document(doc))) == cert

    def test_file_round_trip(self, case_cert, tmp_path):
        """Verify that a written file reads back to the same certificate."""
        path = tmp_path / "cert.json"
        write_document(path, to_document(case_cert, verify_certificate(case_cert)))
        assert from_document(read_document(path)) == case_cert

    def test_tampered_field_fails_digest(self, case_cert):
        """Verify that an edited field breaks the digest."""
        doc = to_document(case_cert, verify_certificate(case_cert))
        data = json.loads(dump_document(doc))
        data["M"] = "(arr unit (b R))"
        tampered = load_document(json.dumps(data))
        report = verify_certificate(from_document(tampered), expected_digest=tampered.digest)
        assert not report.passed
        assert "digest" in report.failed


class TestMalformedDocuments:
    """Documents that do not parse raise CertificateError."""

    def test_not_json(self):
        """Verify that invalid JSON is refused."""
        with pytest.raises(CertificateError):
            load_document("{not json")

    def test_unknown_field(self, case_cert):
        """Verify that an unexpected field is refused."""
        data = json.loads(dump_document(to_document(case_cert, verify_certificate(case_cert))))
        data["extra"] = 1
        with pytest.raises(CertificateError):
            load_document(json.dumps(data))

    def test_unparsable_term(self, case_cert):
        """Verify that an unparsable term is refused."""
        data = json.loads(dump_document(to_document(case_cert, verify_certificate(case_cert))))
        data["l"] = "(lam"
        with pytest.raises(CertificateError):
            from_document(load_document(json.dumps(data)))

    def test_unknown_rule(self, case_cert):
        """Verify that an unknown rule name is refused."""
        data = json.loads(dump_document(to_document(case_cert, verify_certificate(case_cert))))
        data["trace"][0]["rule"] = "Eta"
        with pytest.raises(CertificateError):
            from_document(load_document(json.dumps(data)))

    def test_missing_file(self, tmp_path):
        """Verify that a missing file is refused."""
        with pytest.raises(CertificateError):
            read_document(tmp_path / "missing.json")
