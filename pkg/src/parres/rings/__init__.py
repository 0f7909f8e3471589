"""Bundled ring-spec files (*.ring) for tests, benchmarks, and the CLI."""
