"""Module entry point: python -m sombor."""

from .cli import run

if __name__ == "__main__":
    run()
