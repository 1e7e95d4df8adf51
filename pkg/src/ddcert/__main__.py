from ddcert.cli import main

main()
