"""Entry point for python -m weakly_directed_walks"""

from weakly_directed_walks.cli import app

if __name__ == "__main__":
    app()
