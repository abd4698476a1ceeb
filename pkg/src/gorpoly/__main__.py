from gorpoly.cli import main

main()
