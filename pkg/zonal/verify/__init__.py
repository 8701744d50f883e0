"""Monte-Carlo estimators, verification checks, suites and reports."""
