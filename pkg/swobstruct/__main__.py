"""Allow ``python -m swobstruct``."""

from swobstruct.cli.main import main

if __name__ == "__main__":
    main()
