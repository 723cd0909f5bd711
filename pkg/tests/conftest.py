import hypothesis

hypothesis.settings.register_profile(
    "pkg",
    deadline=None,
    suppress_health_check=[hypothesis.HealthCheck.too_slow],
)
hypothesis.settings.load_profile("pkg")
