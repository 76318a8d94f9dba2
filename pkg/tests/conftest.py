import fastcore.test
import pytest

@pytest.hookimpl(tryfirst=True)
def pytest_pycollect_makeitem(collector, name, obj):
    "Keep the imported `fastcore.test` assertion helpers out of collection."
    if getattr(obj, '__module__', None) == fastcore.test.__name__:
        return []
