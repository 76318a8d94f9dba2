from pathlib import Path

CONFTEST = Path(__file__).with_name("conftest.py")

def test_fastcore_helpers_are_not_collected(pytester):
    pytester.makeconftest(CONFTEST.read_text())
    pytester.makepyfile(test_sample="""
        from fastcore.test import test_close, test_eq, test_fail, test_ne

        def test_sum():
            test_eq(1 + 1, 2)
    """)
    result = pytester.runpytest("-p", "no:cacheprovider")
    result.assert_outcomes(passed=1)
