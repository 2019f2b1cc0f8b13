from bianchi.cli import main

main()
