from hypothesis import settings

settings.register_profile(
    "suite", max_examples=50, deadline=None, database=None, derandomize=True
)
settings.load_profile("suite")
