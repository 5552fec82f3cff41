import sys

from moodgauge.cli import main

if __name__ == "__main__":
    main(args=sys.argv[1:])
