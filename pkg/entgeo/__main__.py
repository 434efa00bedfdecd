from entgeo.main import main

main()
