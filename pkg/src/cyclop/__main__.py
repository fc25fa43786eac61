from cyclop.cli import main

main()
