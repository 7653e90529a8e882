from numpy.testing import assert_

from pyscl import show_versions


def test_show_versions(capsys, monkeypatch):
    """
    Tests that the dependency versions are printed, together with the caps
    after environment overrides.
    """
    monkeypatch.setenv("PYSCL_KOU_BOUND", "3")
    show_versions()

    out = capsys.readouterr().out
    assert_("INSTALLED VERSIONS" in out)
    assert_("numpy: " in out)
    assert_("Python: " in out)
    assert_("kou_bound: 3" in out)
