from logint.cli import main

main()
