"""Pattern-based knowledge graph summarization, exploration and
visual-frame extraction."""

__version__ = "0.1.0"
