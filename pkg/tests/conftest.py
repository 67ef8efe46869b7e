from hypothesis import settings

# Fraction-heavy cases occasionally blow the default 200ms deadline; the
# suite bounds its own runtime in the acceptance tests instead.
settings.register_profile("vandersolve", deadline=None)
settings.load_profile("vandersolve")
