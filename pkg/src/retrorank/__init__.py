"""RetroRank: ranked retrieval of bug-fixing comments from resolved bugs.

A free-text query describing a new bug is matched against the comments of
previously resolved bugs. Base relevance comes from TF-IDF cosine
similarity; enabled modes boost it with document-level sentiment and
co-occurrence keyword importance, and the top-10 comments come back with
their score breakdown.
"""

__version__ = "0.1.0"
