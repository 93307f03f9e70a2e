from levi.cli import main

main()
