#!/usr/bin/env python3
import sys

import checksieve.main


if __name__ == "__main__":
    sys.exit(checksieve.main.main())
