"""Allow running as: python -m schubert_normality"""

from schubert_normality.cli.main import main

if __name__ == "__main__":
    main()
