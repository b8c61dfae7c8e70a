"""Free weak double categories: normal forms, strictification and finite models."""

__version__ = "0.1.0"
