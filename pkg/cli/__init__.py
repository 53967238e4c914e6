"""Command-line surface: configuration, argument parsing and report rendering."""
