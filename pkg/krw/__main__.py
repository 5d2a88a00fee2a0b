from krw.cli import main

main()
